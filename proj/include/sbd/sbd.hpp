#pragma once

// Umbrella header.

#include "sbd/bidiag.hpp"
#include "sbd/bigfloat.hpp"
#include "sbd/errors.hpp"
#include "sbd/experiment.hpp"
#include "sbd/families.hpp"
#include "sbd/io.hpp"
#include "sbd/matrix.hpp"
#include "sbd/oracle.hpp"
#include "sbd/rng.hpp"
#include "sbd/scalar.hpp"
