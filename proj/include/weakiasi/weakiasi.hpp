#pragma once

#include "weakiasi/certificate.hpp"
#include "weakiasi/distance.hpp"
#include "weakiasi/exhaustive.hpp"
#include "weakiasi/families.hpp"
#include "weakiasi/formulas.hpp"
#include "weakiasi/graph.hpp"
#include "weakiasi/io.hpp"
#include "weakiasi/mwis.hpp"
#include "weakiasi/set_label.hpp"
#include "weakiasi/sparing.hpp"
#include "weakiasi/verify.hpp"
