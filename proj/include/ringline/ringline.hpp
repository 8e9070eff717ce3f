#pragma once

#include "ringline/bitset.hpp"
#include "ringline/catalog.hpp"
#include "ringline/clique.hpp"
#include "ringline/error.hpp"
#include "ringline/finite_ring.hpp"
#include "ringline/ideals.hpp"
#include "ringline/profile.hpp"
#include "ringline/projective_line.hpp"
#include "ringline/report.hpp"
#include "ringline/ringspec.hpp"
