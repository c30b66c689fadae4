#pragma once

#include "weilheight/bounds.hpp"
#include "weilheight/cauchy.hpp"
#include "weilheight/errors.hpp"
#include "weilheight/exact_arith.hpp"
#include "weilheight/experiment.hpp"
#include "weilheight/factor.hpp"
#include "weilheight/fraction.hpp"
#include "weilheight/interpolate.hpp"
#include "weilheight/nf.hpp"
#include "weilheight/padic.hpp"
#include "weilheight/poly.hpp"
#include "weilheight/random.hpp"
#include "weilheight/report.hpp"
#include "weilheight/subresultant.hpp"
#include "weilheight/text.hpp"
#include "weilheight/verify.hpp"
