#pragma once

#include "wshrink/error.hpp"
#include "wshrink/estimators.hpp"
#include "wshrink/format.hpp"
#include "wshrink/io.hpp"
#include "wshrink/model.hpp"
#include "wshrink/montecarlo.hpp"
#include "wshrink/published.hpp"
#include "wshrink/risk.hpp"
#include "wshrink/specfun.hpp"
#include "wshrink/tables.hpp"
