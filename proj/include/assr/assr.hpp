#pragma once

#include "assr/classify.hpp"
#include "assr/errors.hpp"
#include "assr/index_sequence.hpp"
#include "assr/matrix.hpp"
#include "assr/matrix_io.hpp"
#include "assr/minors.hpp"
#include "assr/qr.hpp"
#include "assr/rational.hpp"
#include "assr/rng.hpp"
#include "assr/signature.hpp"
#include "assr/staircase.hpp"
#include "assr/testgen.hpp"
