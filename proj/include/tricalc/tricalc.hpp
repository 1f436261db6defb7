#pragma once

#include "tricalc/errors.hpp"
#include "tricalc/gluing.hpp"
#include "tricalc/int_matrix.hpp"
#include "tricalc/io.hpp"
#include "tricalc/lefschetz.hpp"
#include "tricalc/open_book.hpp"
#include "tricalc/smith.hpp"
#include "tricalc/surface.hpp"
#include "tricalc/trisection.hpp"
