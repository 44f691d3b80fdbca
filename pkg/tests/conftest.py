import pytest

import featureline as fl

CAR_DOC = '''# car product line
model "Car"
feature Car {
  feature Engine mandatory group=xor {
    feature Diesel
    feature Gasoline
    feature Hybrid
    feature Electric
  }
  feature ACC
  feature Radar
  feature Camera
  feature Sunroof
  feature RoofRack
}
excludes Sunroof RoofRack
constraint "acc-sensors" ACC => (Radar | Camera)
asset "base-frame" "Base frame" kind=part when always
asset "radar-unit" "Radar unit" kind=part when Radar
asset "acc-ecu" "Cruise control unit" kind=software when ACC
asset "diesel-tank" "Diesel tank" kind=part when Diesel
asset "sunroof-kit" "Sunroof kit" kind=part when Sunroof
asset "charge-port" "Charging port" kind=part when Electric | Hybrid
'''


def build_car_model():
    """Engine XOR group plus free options, no cross-tree constraints."""
    b = fl.ModelBuilder("Car")
    car = b.add("Car", mandatory=True)
    engine = b.add("Engine", car, mandatory=True, group=fl.Group.XOR)
    for lab in ("Diesel", "Gasoline", "Hybrid", "Electric"):
        b.add(lab, engine)
    for lab in ("ACC", "Radar", "Camera", "Sunroof", "RoofRack"):
        b.add(lab, car)
    return b.build()


def leaves_model(n, name="Leaves"):
    """Root plus n independent optional leaves."""
    b = fl.ModelBuilder(name)
    root = b.add("Root", mandatory=True)
    for i in range(n):
        b.add(f"L{i:02d}", root)
    return b.build()


def xor_model(k):
    """Root with one mandatory XOR group of k children."""
    b = fl.ModelBuilder("Xor")
    root = b.add("Root", mandatory=True)
    head = b.add("Choice", root, mandatory=True, group=fl.Group.XOR)
    for i in range(k):
        b.add(f"O{i}", head)
    return b.build()


@pytest.fixture
def car_model():
    return build_car_model()


@pytest.fixture
def car_doc():
    return CAR_DOC


@pytest.fixture
def car_parsed():
    return fl.parse_model(CAR_DOC)
