// document parsing/serialization: see contq/document.hpp
#include "contq/rational.hpp"
