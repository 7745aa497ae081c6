#pragma once

#include "ordre/arith.hpp"
#include "ordre/cyclotomy.hpp"
#include "ordre/error.hpp"
#include "ordre/gf.hpp"
#include "ordre/group.hpp"
#include "ordre/linear.hpp"
#include "ordre/perm.hpp"
#include "ordre/poly.hpp"
#include "ordre/resolvent.hpp"
