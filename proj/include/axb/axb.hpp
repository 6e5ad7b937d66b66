#pragma once

#include "axb/arithmetic.hpp"
#include "axb/affine_semigroup.hpp"
#include "axb/nica_spectrum.hpp"
#include "axb/covariant_monomials.hpp"
#include "axb/exel_calculus.hpp"
#include "axb/product_modules.hpp"
#include "axb/quotients_kms.hpp"
#include "axb/parser.hpp"
#include "axb/report.hpp"
#include "axb/suites.hpp"
