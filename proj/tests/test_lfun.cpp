#include <doctest.h>

TEST_SUITE_BEGIN("lfun");
TEST_SUITE_END();
