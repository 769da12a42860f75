#pragma once

/// Everything except the command line layer.

#include "katofan/checks.hpp"
#include "katofan/io.hpp"
#include "katofan/oracles.hpp"
#include "katofan/sampling.hpp"
#include "katofan/stack.hpp"
#include "katofan/trop.hpp"
