#include <doctest.h>

TEST_SUITE_BEGIN("hypergeom");
TEST_SUITE_END();
