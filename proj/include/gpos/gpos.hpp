#pragma once

#include <gpos/analysis.hpp>
#include <gpos/catalog.hpp>
#include <gpos/clique.hpp>
#include <gpos/corpus.hpp>
#include <gpos/derived.hpp>
#include <gpos/distance.hpp>
#include <gpos/enumerate.hpp>
#include <gpos/error.hpp>
#include <gpos/families.hpp>
#include <gpos/graph.hpp>
#include <gpos/graph6.hpp>
#include <gpos/invariants.hpp>
#include <gpos/isomorphism.hpp>
#include <gpos/position_search.hpp>
#include <gpos/positions.hpp>
#include <gpos/products.hpp>
#include <gpos/suite.hpp>
#include <gpos/verdict.hpp>
#include <gpos/vertex_set.hpp>
