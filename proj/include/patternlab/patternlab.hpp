#pragma once

#include <patternlab/bigint.hpp>
#include <patternlab/dyck.hpp>
#include <patternlab/family.hpp>
#include <patternlab/multipoly.hpp>
#include <patternlab/oracle.hpp>
#include <patternlab/permutation.hpp>
#include <patternlab/popularity.hpp>
#include <patternlab/rec123.hpp>
#include <patternlab/rec132.hpp>
#include <patternlab/series.hpp>
