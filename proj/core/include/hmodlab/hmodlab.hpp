// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/construction.hpp"
#include "hmodlab/dense_seq.hpp"
#include "hmodlab/enclosure.hpp"
#include "hmodlab/errors.hpp"
#include "hmodlab/func_lin.hpp"
#include "hmodlab/interval.hpp"
#include "hmodlab/module.hpp"
#include "hmodlab/prehilbert.hpp"
#include "hmodlab/pwl.hpp"
#include "hmodlab/rational.hpp"
#include "hmodlab/refutation.hpp"
#include "hmodlab/serialize.hpp"
