#include <doctest.h>

TEST_SUITE_BEGIN("charpoly");
TEST_SUITE_END();
