#pragma once

#include "builders.hpp"
#include "charclasses.hpp"
#include "cohomology_class.hpp"
#include "duality.hpp"
#include "error.hpp"
#include "gauss_rational.hpp"
#include "kexpr.hpp"
#include "matrix.hpp"
#include "pairing.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "series.hpp"
#include "space.hpp"
#include "space_io.hpp"
#include "suites.hpp"
#include "transforms.hpp"
