#pragma once

#include "bp/catalog.hpp"
#include "bp/formula.hpp"
#include "bp/indices.hpp"
#include "bp/lifetimes.hpp"
#include "bp/oracle.hpp"
#include "bp/spec_io.hpp"
#include "bp/structure.hpp"
