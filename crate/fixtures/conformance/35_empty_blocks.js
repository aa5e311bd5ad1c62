;
{ }
{
  ;
  ;
}
if (a) ;
while (consume()) ;
