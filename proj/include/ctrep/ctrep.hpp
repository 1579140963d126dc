#pragma once

#include "ctrep/bounds.hpp"
#include "ctrep/charpoly.hpp"
#include "ctrep/error.hpp"
#include "ctrep/identities.hpp"
#include "ctrep/linalg.hpp"
#include "ctrep/mask_algebra.hpp"
#include "ctrep/matrix.hpp"
#include "ctrep/polynomial.hpp"
#include "ctrep/quaternion.hpp"
#include "ctrep/random.hpp"
#include "ctrep/rational.hpp"
#include "ctrep/representations.hpp"
#include "ctrep/ring.hpp"
#include "ctrep/skew.hpp"
#include "ctrep/text.hpp"
#include "ctrep/truncated_poly.hpp"
