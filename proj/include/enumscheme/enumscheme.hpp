#pragma once

#include "enumscheme/bignat.hpp"
#include "enumscheme/gap_ideal.hpp"
#include "enumscheme/gap_vector.hpp"
#include "enumscheme/oracle.hpp"
#include "enumscheme/permutation.hpp"
#include "enumscheme/reducibility.hpp"
#include "enumscheme/scheme.hpp"
#include "enumscheme/scheme_io.hpp"
#include "enumscheme/triage.hpp"
#include "enumscheme/zset.hpp"
