#include "elevenvertex/simulate.hpp"
