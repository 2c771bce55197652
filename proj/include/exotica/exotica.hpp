#pragma once

#include "exotica/coefficients.hpp"
#include "exotica/errors.hpp"
#include "exotica/group.hpp"
#include "exotica/io.hpp"
#include "exotica/matrices.hpp"
#include "exotica/posdef.hpp"
#include "exotica/quotient.hpp"
#include "exotica/reps.hpp"
#include "exotica/ring.hpp"
#include "exotica/seminorms.hpp"
#include "exotica/subgroups.hpp"
#include "exotica/truncated_regular.hpp"
#include "exotica/words.hpp"
