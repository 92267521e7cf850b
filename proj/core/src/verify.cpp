#include "elevenvertex/verify.hpp"
