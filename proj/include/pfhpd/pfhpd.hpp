#pragma once

#include "pfhpd/integer.hpp"
#include "pfhpd/weights.hpp"
#include "pfhpd/schur.hpp"
#include "pfhpd/cohom.hpp"
#include "pfhpd/objects.hpp"
#include "pfhpd/hilbert.hpp"
#include "pfhpd/hpd.hpp"
#include "pfhpd/verify.hpp"
#include "pfhpd/bundle_expr.hpp"
#include "pfhpd/json_io.hpp"
