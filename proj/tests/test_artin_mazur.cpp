#include <doctest.h>

TEST_SUITE_BEGIN("artin_mazur");
TEST_SUITE_END();
