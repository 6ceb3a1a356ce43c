#pragma once

#include "dicyclic/errors.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/covering.hpp"
#include "dicyclic/permutation.hpp"
#include "dicyclic/monodromy.hpp"
#include "dicyclic/cyclic_cover.hpp"
#include "dicyclic/real_forms.hpp"
#include "dicyclic/curves.hpp"
#include "dicyclic/genus_search.hpp"
