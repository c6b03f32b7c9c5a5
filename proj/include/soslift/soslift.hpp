#pragma once

#include "soslift/farey.hpp"
#include "soslift/io.hpp"
#include "soslift/lifting.hpp"
#include "soslift/perm_class.hpp"
#include "soslift/perm_sets.hpp"
#include "soslift/permutation.hpp"
#include "soslift/predicates.hpp"
#include "soslift/report.hpp"
#include "soslift/sos.hpp"
#include "soslift/trees.hpp"
