#pragma once

#include "fht/asymptotics.hpp"
#include "fht/core.hpp"
#include "fht/correlators.hpp"
#include "fht/exact.hpp"
#include "fht/fft.hpp"
#include "fht/special.hpp"
#include "fht/symbol.hpp"
