#pragma once

#include "seifert/applications/census.hpp"
#include "seifert/applications/families.hpp"
#include "seifert/applications/tables.hpp"
#include "seifert/applications/trefoil.hpp"
