#pragma once
// Everything in one include. Individual headers are self-contained if you want less.

#include "trivzero/core/errors.hpp"
#include "trivzero/core/integer.hpp"
#include "trivzero/core/parallel.hpp"

#include "trivzero/field/base_field.hpp"
#include "trivzero/field/embed.hpp"
#include "trivzero/field/ideal.hpp"
#include "trivzero/field/ray_class.hpp"
#include "trivzero/field/units.hpp"

#include "trivzero/padic/dual.hpp"
#include "trivzero/padic/fit.hpp"
#include "trivzero/padic/functions.hpp"
#include "trivzero/padic/padic_number.hpp"
#include "trivzero/padic/quad_padic.hpp"
#include "trivzero/padic/series.hpp"

#include "trivzero/chars/cyclotomic.hpp"
#include "trivzero/chars/hecke_character.hpp"
#include "trivzero/chars/presets.hpp"

#include "trivzero/zeta/bernoulli.hpp"
#include "trivzero/zeta/padic_zeta.hpp"
#include "trivzero/zeta/shintani.hpp"

#include "trivzero/eis/eisenstein.hpp"
#include "trivzero/gs/gross_stark.hpp"
#include "trivzero/gs/quadratic.hpp"
#include "trivzero/deform/deformation.hpp"

#include "trivzero/io/cache.hpp"
#include "trivzero/io/json.hpp"
#include "trivzero/app/commands.hpp"
#include "trivzero/app/selftest.hpp"
