#pragma once

#include "wedgeforge/error.hpp"
#include "wedgeforge/complexes.hpp"
#include "wedgeforge/wedge.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/charmaps.hpp"
#include "wedgeforge/rings.hpp"
#include "wedgeforge/polyprod.hpp"
#include "wedgeforge/nests.hpp"
#include "wedgeforge/corpus.hpp"
#include "wedgeforge/io.hpp"
