#pragma once

#include "hopflim/errors.hpp"
#include "hopflim/field.hpp"
#include "hopflim/matrix.hpp"
#include "hopflim/sparse.hpp"
#include "hopflim/subspace.hpp"
#include "hopflim/coalgebra.hpp"
#include "hopflim/structures.hpp"
#include "hopflim/equalizers.hpp"
#include "hopflim/products.hpp"
#include "hopflim/cofree.hpp"
#include "hopflim/zoo.hpp"
