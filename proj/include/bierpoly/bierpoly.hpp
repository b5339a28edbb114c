#pragma once

#include "bierpoly/bier.hpp"
#include "bierpoly/classify.hpp"
#include "bierpoly/complex.hpp"
#include "bierpoly/geom.hpp"
#include "bierpoly/io.hpp"
#include "bierpoly/linfeas.hpp"
#include "bierpoly/poly.hpp"
#include "bierpoly/rational.hpp"
#include "bierpoly/realize.hpp"
#include "bierpoly/survey.hpp"
