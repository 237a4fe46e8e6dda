#pragma once

#include "simrank/correlation.hpp"
#include "simrank/dataset.hpp"
#include "simrank/errors.hpp"
#include "simrank/metrics.hpp"
#include "simrank/normalization.hpp"
#include "simrank/ranking.hpp"
#include "simrank/report.hpp"
#include "simrank/schema.hpp"
#include "simrank/student_t.hpp"
