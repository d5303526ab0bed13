#pragma once

// Everything except the command-line front end.

#include "ekr/exact.hpp"
#include "ekr/permgroup.hpp"
#include "ekr/symmetric_group.hpp"
#include "ekr/chartab.hpp"
#include "ekr/linalg.hpp"
#include "ekr/scheme.hpp"
#include "ekr/graphs.hpp"
#include "ekr/cliques.hpp"
#include "ekr/search.hpp"
#include "ekr/ekrverify.hpp"
