#pragma once

#include "lpa/classify.hpp"
#include "lpa/error.hpp"
#include "lpa/extremal.hpp"
#include "lpa/graph.hpp"
#include "lpa/oracle.hpp"
#include "lpa/partitions.hpp"
#include "lpa/truncate.hpp"
