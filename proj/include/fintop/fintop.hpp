#pragma once

// Umbrella header: the whole library except the CLI front end (cli.hpp
// pulls in the vendored argument parser, which most consumers don't want).

#include "fintop/classifiers.hpp"
#include "fintop/claims.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/errors.hpp"
#include "fintop/implications.hpp"
#include "fintop/io.hpp"
#include "fintop/map.hpp"
#include "fintop/mask.hpp"
#include "fintop/names.hpp"
#include "fintop/operators.hpp"
#include "fintop/space.hpp"
#include "fintop/sweep.hpp"
#include "fintop/variant.hpp"
#include "fintop/version.hpp"
