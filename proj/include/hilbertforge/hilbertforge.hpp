#pragma once

#include "bigraded.hpp"
#include "compositions.hpp"
#include "hilbert_polynomial.hpp"
#include "hilbert_series.hpp"
#include "io.hpp"
#include "koszul.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "rank.hpp"
#include "rational.hpp"
#include "scan.hpp"
