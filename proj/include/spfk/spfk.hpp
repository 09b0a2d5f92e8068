#pragma once

// Umbrella header.

#include "spfk/core/combinatorics.hpp"
#include "spfk/core/rational.hpp"
#include "spfk/core/ring.hpp"
#include "spfk/core/sampler.hpp"
#include "spfk/freealg/algebra.hpp"
#include "spfk/freealg/alphabet.hpp"
#include "spfk/freealg/antipode.hpp"
#include "spfk/freealg/free_poly.hpp"
#include "spfk/freealg/word.hpp"
#include "spfk/identities/hyperpf_structure.hpp"
#include "spfk/identities/kernel_checks.hpp"
#include "spfk/identities/quasisym.hpp"
#include "spfk/identities/rational_identities.hpp"
#include "spfk/identities/report.hpp"
#include "spfk/identities/shuffle_wick.hpp"
#include "spfk/identities/suite.hpp"
#include "spfk/identities/vandermonde.hpp"
#include "spfk/integrals/chen.hpp"
#include "spfk/integrals/debruijn.hpp"
#include "spfk/multilinear/mask_algebra.hpp"
#include "spfk/tensors/blocked.hpp"
#include "spfk/tensors/dense_matrix.hpp"
#include "spfk/tensors/pfaffian.hpp"
#include "spfk/tensors/tensor.hpp"
#include "spfk/tensors/tensor_json.hpp"
