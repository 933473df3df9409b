#pragma once

#include "seifert/numbertheory/congruence.hpp"
#include "seifert/numbertheory/integer.hpp"
#include "seifert/numbertheory/matrix.hpp"
#include "seifert/numbertheory/rational.hpp"
#include "seifert/numbertheory/smith.hpp"
