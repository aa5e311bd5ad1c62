function Mammal(name) {
	this.name=name;
}
Mammal.prototype.toString=function(){
	return '['+this.name+']';
}
Cat.prototype = Object.create(Mammal.prototype);  // Inheritance
// ...
function Cat(name) {
	this.name='"meow" ' + name;
}
var animal = new Mammal('Mr. Donalds');
var myPet = new Cat('Felix');
