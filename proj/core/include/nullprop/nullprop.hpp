#ifndef NULLPROP_NULLPROP_HPP
#define NULLPROP_NULLPROP_HPP

#include "nullprop/bounding.hpp"
#include "nullprop/calibration.hpp"
#include "nullprop/calibration_table.hpp"
#include "nullprop/estimator.hpp"
#include "nullprop/pvalue_sample.hpp"
#include "nullprop/random.hpp"
#include "nullprop/regime.hpp"
#include "nullprop/simlab.hpp"
#include "nullprop/special_functions.hpp"
#include "nullprop/subbotin.hpp"
#include "nullprop/summary.hpp"
#include "nullprop/version.hpp"
#include "nullprop/weighted_stat.hpp"

#endif // NULLPROP_NULLPROP_HPP
