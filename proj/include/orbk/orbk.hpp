#pragma once

#include "orbk/ade.hpp"
#include "orbk/character_table.hpp"
#include "orbk/errors.hpp"
#include "orbk/fgab.hpp"
#include "orbk/finite_group.hpp"
#include "orbk/five_lemma.hpp"
#include "orbk/int_matrix.hpp"
#include "orbk/mckay.hpp"
#include "orbk/orbifold.hpp"
#include "orbk/presented.hpp"
#include "orbk/quaternion.hpp"
#include "orbk/selftest.hpp"
#include "orbk/smith.hpp"
#include "orbk/verifier.hpp"
