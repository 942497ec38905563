#pragma once
#include "bigint.hpp"
#include "combinatorics.hpp"
#include "degree_data.hpp"
#include "dimension.hpp"
#include "errors.hpp"
#include "gf_linalg.hpp"
#include "hilbert.hpp"
#include "hypotheses.hpp"
#include "io.hpp"
#include "matrix_factory.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "resolutions.hpp"
#include "scan.hpp"
