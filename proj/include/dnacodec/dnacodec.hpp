// dnacodec.hpp -- convenience umbrella header.

#pragma once

#include "alphabet.hpp"
#include "bigint.hpp"
#include "channel.hpp"
#include "constrained.hpp"
#include "error_control.hpp"
#include "framing.hpp"
#include "gc_balance.hpp"
#include "rll_enum.hpp"
#include "rll_replace.hpp"
#include "vt.hpp"
