#pragma once

#include "orbitposet/error.hpp"
#include "orbitposet/permutation.hpp"
#include "orbitposet/poset.hpp"
#include "orbitposet/bruhat.hpp"
#include "orbitposet/parabolic.hpp"
#include "orbitposet/orbit_matrix.hpp"
#include "orbitposet/classifier.hpp"
#include "orbitposet/serialize.hpp"
#include "orbitposet/verify.hpp"
