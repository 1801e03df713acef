#pragma once

#include "gmt/bundle/bundle.hpp"
#include "gmt/chains/chain.hpp"
#include "gmt/chains/complex.hpp"
#include "gmt/chains/constancy.hpp"
#include "gmt/chains/cut.hpp"
#include "gmt/chains/product.hpp"
#include "gmt/chains/push_forward.hpp"
#include "gmt/error.hpp"
#include "gmt/exterior/multivector.hpp"
#include "gmt/flatnorm/flat_norm.hpp"
#include "gmt/group/normed_group.hpp"
#include "gmt/group/presentation.hpp"
#include "gmt/group/smith.hpp"
#include "gmt/lp/simplex.hpp"
#include "gmt/matrix.hpp"
#include "gmt/numeric.hpp"
