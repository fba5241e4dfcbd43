#pragma once

#include "infgon/certificate.hpp"
#include "infgon/classify.hpp"
#include "infgon/conditions.hpp"
#include "infgon/crossing.hpp"
#include "infgon/cyclic.hpp"
#include "infgon/diagonal.hpp"
#include "infgon/errors.hpp"
#include "infgon/feasibility.hpp"
#include "infgon/finite_oracle.hpp"
#include "infgon/hom.hpp"
#include "infgon/intmath.hpp"
#include "infgon/model_io.hpp"
#include "infgon/ncwindow.hpp"
#include "infgon/ptolemy.hpp"
#include "infgon/render.hpp"
#include "infgon/suprema.hpp"
