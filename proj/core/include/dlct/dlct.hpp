#pragma once

#include "dlct/analysis.hpp"
#include "dlct/bitmatrix.hpp"
#include "dlct/catalog.hpp"
#include "dlct/check.hpp"
#include "dlct/equivalence.hpp"
#include "dlct/error.hpp"
#include "dlct/field.hpp"
#include "dlct/random.hpp"
#include "dlct/spectra.hpp"
#include "dlct/types.hpp"
#include "dlct/vbf.hpp"
#include "dlct/wht.hpp"
