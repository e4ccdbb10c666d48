#pragma once

#include "berger/algebra.hpp"
#include "berger/diameter.hpp"
#include "berger/geodesic.hpp"
#include "berger/locus.hpp"
#include "berger/metric.hpp"
#include "berger/oracle.hpp"
#include "berger/roots.hpp"
#include "berger/times.hpp"
#include "berger/types.hpp"
