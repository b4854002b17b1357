#pragma once

#include "starricci/curvature.hpp"
#include "starricci/frame.hpp"
#include "starricci/models.hpp"
#include "starricci/parallelism.hpp"
#include "starricci/report_io.hpp"
#include "starricci/scan.hpp"
#include "starricci/verification.hpp"
