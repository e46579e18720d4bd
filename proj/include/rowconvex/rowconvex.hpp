#pragma once

#include "analysis.hpp"
#include "common.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "genfunc.hpp"
#include "oracle.hpp"
#include "reference.hpp"
#include "report.hpp"
#include "verify.hpp"
