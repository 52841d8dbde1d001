#pragma once

// Convenience include for the whole library.

#include "bench.hpp"
#include "cli.hpp"
#include "interval_index.hpp"
#include "mups.hpp"
#include "oracle.hpp"
#include "rle_eertree.hpp"
#include "rle_manacher.hpp"
#include "rle_string.hpp"
#include "sups_index.hpp"
#include "verify.hpp"
