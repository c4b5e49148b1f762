#pragma once

#include "coxlink/errors.hpp"
#include "coxlink/matrix.hpp"
#include "coxlink/graph.hpp"
#include "coxlink/chord.hpp"
#include "coxlink/polynomial.hpp"
#include "coxlink/forms.hpp"
#include "coxlink/roots.hpp"
#include "coxlink/spectra.hpp"
#include "coxlink/realizer.hpp"
#include "coxlink/orderings.hpp"
#include "coxlink/analysis.hpp"
#include "coxlink/io.hpp"
#include "coxlink/svg.hpp"
#include "coxlink/scan.hpp"
