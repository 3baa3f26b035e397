#pragma once

#include "nodal/certificate.hpp"
#include "nodal/certificate_io.hpp"
#include "nodal/curve.hpp"
#include "nodal/errors.hpp"
#include "nodal/expr.hpp"
#include "nodal/obstruction.hpp"
#include "nodal/poly.hpp"
#include "nodal/rational.hpp"
#include "nodal/rewriting.hpp"
#include "nodal/sampling.hpp"
#include "nodal/weyl.hpp"
