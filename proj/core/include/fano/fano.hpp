#pragma once

#include "fano/apolar.hpp"
#include "fano/census.hpp"
#include "fano/error.hpp"
#include "fano/field.hpp"
#include "fano/invariants.hpp"
#include "fano/matrix.hpp"
#include "fano/monomial.hpp"
#include "fano/netquad.hpp"
#include "fano/parse.hpp"
#include "fano/pfaffian.hpp"
#include "fano/pipeline.hpp"
#include "fano/poly.hpp"
#include "fano/rational.hpp"
#include "fano/report.hpp"
#include "fano/resolve.hpp"
#include "fano/skewfano.hpp"
#include "fano/waring.hpp"
