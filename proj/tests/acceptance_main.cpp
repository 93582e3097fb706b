#include <iostream>

#include "cantor/acceptance.hpp"

int main() { return cantor::run_selfcheck(std::cout) ? 0 : 1; }
