#pragma once

#include "canonical.hpp"
#include "closed_forms.hpp"
#include "completion.hpp"
#include "error.hpp"
#include "kset.hpp"
#include "multiset.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "results_io.hpp"
#include "search.hpp"
#include "solve.hpp"
#include "uint128.hpp"
