#pragma once

#include "cuspidal/ntheory.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/modcurve.hpp"
#include "cuspidal/lattice.hpp"
#include "cuspidal/cyclotomic.hpp"
#include "cuspidal/qseries.hpp"
#include "cuspidal/etafam.hpp"
#include "cuspidal/unitcheck.hpp"
#include "cuspidal/classgrp.hpp"
#include "cuspidal/expr.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/json_io.hpp"
#include "cuspidal/commands.hpp"
