#pragma once

// Umbrella header for the Boolean threshold network toolkit.

#include "btn/autoencoders.hpp"
#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/encoders.hpp"
#include "btn/errors.hpp"
#include "btn/hardness.hpp"
#include "btn/network.hpp"
#include "btn/probabilistic.hpp"
#include "btn/rng.hpp"
#include "btn/separation.hpp"
#include "btn/serialize.hpp"
#include "btn/verify.hpp"
