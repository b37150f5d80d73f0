#ifndef EVENWEAVE_EVENWEAVE_HPP
#define EVENWEAVE_EVENWEAVE_HPP

#include "evenweave/certificate.hpp"
#include "evenweave/constructions.hpp"
#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/exact_cover.hpp"
#include "evenweave/generic.hpp"
#include "evenweave/glue.hpp"
#include "evenweave/group.hpp"
#include "evenweave/hamiltonian.hpp"
#include "evenweave/io.hpp"
#include "evenweave/labeled.hpp"
#include "evenweave/paths.hpp"
#include "evenweave/starters.hpp"
#include "evenweave/system.hpp"
#include "evenweave/unparalleled.hpp"
#include "evenweave/verifier.hpp"
#include "evenweave/vertex.hpp"

#endif
