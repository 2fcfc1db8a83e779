#pragma once

#include "stlab/bigint.hpp"
#include "stlab/constructions.hpp"
#include "stlab/error.hpp"
#include "stlab/hom.hpp"
#include "stlab/json_io.hpp"
#include "stlab/milnor.hpp"
#include "stlab/parse.hpp"
#include "stlab/patching.hpp"
#include "stlab/random.hpp"
#include "stlab/representation.hpp"
#include "stlab/ring.hpp"
#include "stlab/ring_json.hpp"
#include "stlab/root_system.hpp"
#include "stlab/scalar.hpp"
#include "stlab/simplicial.hpp"
#include "stlab/word.hpp"
