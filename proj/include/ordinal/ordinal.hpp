#pragma once

#include "element_set.hpp"
#include "error.hpp"
#include "relation.hpp"
#include "poset.hpp"
#include "deduction.hpp"
#include "preorder.hpp"
#include "analysis.hpp"
#include "gaps.hpp"
#include "generate.hpp"
#include "universal.hpp"
#include "lines.hpp"
#include "linear_bases.hpp"
#include "io.hpp"
