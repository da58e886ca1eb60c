#pragma once

#include "pgit/cartan_type.hpp"
#include "pgit/chambers.hpp"
#include "pgit/error.hpp"
#include "pgit/feasibility.hpp"
#include "pgit/freudenthal.hpp"
#include "pgit/git.hpp"
#include "pgit/hyperplanes.hpp"
#include "pgit/multiplicity.hpp"
#include "pgit/numeric.hpp"
#include "pgit/principal.hpp"
#include "pgit/root_system.hpp"
#include "pgit/setting.hpp"
#include "pgit/weyl_group.hpp"
