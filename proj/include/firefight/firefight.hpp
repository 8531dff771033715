#ifndef FIREFIGHT_FIREFIGHT_HPP
#define FIREFIGHT_FIREFIGHT_HPP

#include "firefight/bench.hpp"
#include "firefight/exact.hpp"
#include "firefight/fire.hpp"
#include "firefight/generators.hpp"
#include "firefight/graph.hpp"
#include "firefight/instance.hpp"
#include "firefight/kernel.hpp"
#include "firefight/modulator.hpp"
#include "firefight/reductions.hpp"
#include "firefight/stars.hpp"
#include "firefight/threshold.hpp"

#endif // FIREFIGHT_FIREFIGHT_HPP
