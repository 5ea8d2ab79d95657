#pragma once

#include "amc/additive.hpp"
#include "amc/bigint.hpp"
#include "amc/concat.hpp"
#include "amc/core_arith.hpp"
#include "amc/multiplicative.hpp"
#include "amc/sieve.hpp"
#include "amc/table_io.hpp"
