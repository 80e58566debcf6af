#include <doctest.h>

TEST_SUITE_BEGIN("pseq");
TEST_SUITE_END();
