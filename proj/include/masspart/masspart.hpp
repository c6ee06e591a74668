#pragma once

// Umbrella include for the whole library.

#include "masspart/version.hpp"
#include "masspart/util.hpp"
#include "masspart/randkit.hpp"
#include "masspart/partition.hpp"
#include "masspart/repr.hpp"
#include "masspart/excursion.hpp"
#include "masspart/stattest.hpp"
#include "masspart/io.hpp"
#include "masspart/suite.hpp"
#include "masspart/cli.hpp"
