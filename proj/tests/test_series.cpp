#include <doctest.h>

TEST_SUITE_BEGIN("series");
TEST_SUITE_END();
