#pragma once

// Umbrella header.

#include "word.hpp"
#include "tailseq.hpp"
#include "plane.hpp"
#include "rational.hpp"
#include "nbt.hpp"
#include "orbit.hpp"
#include "region.hpp"
#include "plist.hpp"
#include "verify.hpp"
#include "forcing.hpp"
#include "json_io.hpp"
#include "svg.hpp"
