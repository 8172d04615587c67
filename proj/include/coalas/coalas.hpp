// Umbrella header.

#ifndef COALAS_COALAS_HPP
#define COALAS_COALAS_HPP

#include "coalas/bio.hpp"
#include "coalas/conll.hpp"
#include "coalas/crf.hpp"
#include "coalas/error_analysis.hpp"
#include "coalas/eval.hpp"
#include "coalas/features.hpp"
#include "coalas/lbfgs.hpp"
#include "coalas/model_io.hpp"
#include "coalas/select.hpp"
#include "coalas/stats.hpp"
#include "coalas/stats_tests.hpp"
#include "coalas/train.hpp"
#include "coalas/types.hpp"
#include "coalas/unicode.hpp"

#endif
