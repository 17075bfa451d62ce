#pragma once

#include "persuasion/appendix_c.hpp"
#include "persuasion/best_response.hpp"
#include "persuasion/bruteforce.hpp"
#include "persuasion/checks.hpp"
#include "persuasion/constructors.hpp"
#include "persuasion/downstream.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/instances.hpp"
#include "persuasion/json_io.hpp"
#include "persuasion/leakage.hpp"
#include "persuasion/lp_builders.hpp"
#include "persuasion/profiles.hpp"
#include "persuasion/rational.hpp"
#include "persuasion/report.hpp"
#include "persuasion/rng.hpp"
#include "persuasion/scheme.hpp"
#include "persuasion/simplex.hpp"
#include "persuasion/utility.hpp"
