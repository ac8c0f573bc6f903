// svg rendering: see contq/svg.hpp
#include "contq/rational.hpp"
