#pragma once

#include "pybox/boxes.hpp"
#include "pybox/descent.hpp"
#include "pybox/intmath.hpp"
#include "pybox/parallel.hpp"
#include "pybox/quadruples.hpp"
#include "pybox/records.hpp"
#include "pybox/report.hpp"
#include "pybox/triples.hpp"
